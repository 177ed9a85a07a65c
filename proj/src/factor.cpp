/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

#include "valsat/poly.hpp"
#include "valsat/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace valsat {

namespace {

using u64 = std::uint64_t;
using MP = std::vector<u64>; /* polynomial over Z/p, low to high */

struct Zp {
	u64 p;

	u64 add(u64 a, u64 b) const { return (a + b) % p; }
	u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
	u64 mul(u64 a, u64 b) const { return (a * b) % p; }
	u64 pow(u64 a, u64 e) const
	{
		u64 r = 1;
		a %= p;
		while (e) {
			if (e & 1)
				r = mul(r, a);
			a = mul(a, a);
			e >>= 1;
		}
		return r;
	}
	u64 inv(u64 a) const { return pow(a, p - 2); }

	static void trim(MP &a)
	{
		while (!a.empty() && a.back() == 0)
			a.pop_back();
	}
	static int deg(const MP &a) { return static_cast<int>(a.size()) - 1; }

	MP reduce(const std::vector<Integer> &f) const
	{
		MP r(f.size());
		for (std::size_t i = 0; i < f.size(); i++) {
			Integer m;
			mpz_fdiv_r_ui(m.get_mpz_t(), f[i].get_mpz_t(), p);
			r[i] = m.get_ui();
		}
		trim(r);
		return r;
	}

	MP addp(const MP &a, const MP &b) const
	{
		MP r(std::max(a.size(), b.size()), 0);
		for (std::size_t i = 0; i < a.size(); i++)
			r[i] = add(r[i], a[i]);
		for (std::size_t i = 0; i < b.size(); i++)
			r[i] = add(r[i], b[i]);
		trim(r);
		return r;
	}
	MP subp(const MP &a, const MP &b) const
	{
		MP r(std::max(a.size(), b.size()), 0);
		for (std::size_t i = 0; i < a.size(); i++)
			r[i] = add(r[i], a[i]);
		for (std::size_t i = 0; i < b.size(); i++)
			r[i] = sub(r[i], b[i]);
		trim(r);
		return r;
	}
	MP mulp(const MP &a, const MP &b) const
	{
		if (a.empty() || b.empty())
			return {};
		MP r(a.size() + b.size() - 1, 0);
		for (std::size_t i = 0; i < a.size(); i++)
			for (std::size_t j = 0; j < b.size(); j++)
				r[i + j] = add(r[i + j], mul(a[i], b[j]));
		trim(r);
		return r;
	}
	std::pair<MP, MP> divmodp(const MP &a, const MP &b) const
	{
		MP r = a;
		if (deg(a) < deg(b))
			return {MP{}, r};
		MP q(a.size() - b.size() + 1, 0);
		u64 il = inv(b.back());
		for (int i = deg(a); i >= deg(b); i--) {
			if (r[i] == 0)
				continue;
			u64 f = mul(r[i], il);
			q[i - deg(b)] = f;
			for (int j = 0; j <= deg(b); j++)
				r[i - deg(b) + j] = sub(r[i - deg(b) + j], mul(f, b[j]));
		}
		trim(q);
		trim(r);
		return {q, r};
	}
	MP modp(const MP &a, const MP &b) const { return divmodp(a, b).second; }
	MP monic(const MP &a) const
	{
		if (a.empty())
			return a;
		u64 il = inv(a.back());
		MP r(a);
		for (auto &c : r)
			c = mul(c, il);
		return r;
	}
	MP gcdp(MP a, MP b) const
	{
		while (!b.empty()) {
			MP r = modp(a, b);
			a = std::move(b);
			b = std::move(r);
		}
		return monic(a);
	}
	/* s, t with s a + t b = gcd(a, b) = 1 */
	std::pair<MP, MP> ext_euclid(const MP &a, const MP &b) const
	{
		MP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
		while (!r1.empty()) {
			auto [q, r] = divmodp(r0, r1);
			MP s2 = subp(s0, mulp(q, s1));
			MP t2 = subp(t0, mulp(q, t1));
			r0 = std::move(r1);
			r1 = std::move(r);
			s0 = std::move(s1);
			s1 = std::move(s2);
			t0 = std::move(t1);
			t1 = std::move(t2);
		}
		u64 il = inv(r0.back());
		for (auto &c : s0)
			c = mul(c, il);
		for (auto &c : t0)
			c = mul(c, il);
		return {s0, t0};
	}
	MP powmod(MP base, const Integer &e, const MP &m) const
	{
		MP r{1};
		base = modp(base, m);
		std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
		for (std::size_t i = bits; i-- > 0;) {
			r = modp(mulp(r, r), m);
			if (mpz_tstbit(e.get_mpz_t(), i))
				r = modp(mulp(r, base), m);
		}
		return r;
	}
	MP derivative(const MP &a) const
	{
		if (a.size() <= 1)
			return {};
		MP r(a.size() - 1);
		for (std::size_t i = 1; i < a.size(); i++)
			r[i - 1] = mul(a[i], i % p);
		trim(r);
		return r;
	}
};

std::vector<std::pair<MP, int>> distinct_degree(const Zp &F, MP f)
{
	std::vector<std::pair<MP, int>> out;
	MP h{0, 1};
	const MP x{0, 1};
	for (int d = 1; 2 * d <= Zp::deg(f); d++) {
		h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
		MP g = F.gcdp(f, F.subp(h, x));
		if (Zp::deg(g) > 0) {
			out.emplace_back(g, d);
			f = F.divmodp(f, g).first;
			h = F.modp(h, f);
		}
	}
	if (Zp::deg(f) > 0)
		out.emplace_back(F.monic(f), Zp::deg(f));
	return out;
}

void equal_degree(const Zp &F, const MP &g, int d, std::mt19937_64 &rng, std::vector<MP> &out)
{
	if (Zp::deg(g) == d) {
		out.push_back(F.monic(g));
		return;
	}
	Integer e;
	mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
	e = (e - 1) / 2;
	while (true) {
		MP a(Zp::deg(g));
		for (auto &c : a)
			c = rng() % F.p;
		Zp::trim(a);
		if (Zp::deg(a) < 1)
			continue;
		MP b = F.subp(F.powmod(a, e, g), MP{1});
		MP h = F.gcdp(g, b);
		if (Zp::deg(h) > 0 && Zp::deg(h) < Zp::deg(g)) {
			equal_degree(F, h, d, rng, out);
			equal_degree(F, F.divmodp(g, h).first, d, rng, out);
			return;
		}
	}
}

/* ---- arithmetic modulo p^k on integer coefficient vectors ---- */

using ZP = std::vector<Integer>;

void ztrim(ZP &a)
{
	while (!a.empty() && a.back() == 0)
		a.pop_back();
}

ZP zmod(ZP a, const Integer &m)
{
	for (auto &c : a)
		mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
	ztrim(a);
	return a;
}

ZP zmul(const ZP &a, const ZP &b, const Integer &m)
{
	if (a.empty() || b.empty())
		return {};
	ZP r(a.size() + b.size() - 1, 0);
	for (std::size_t i = 0; i < a.size(); i++)
		for (std::size_t j = 0; j < b.size(); j++)
			r[i + j] += a[i] * b[j];
	return zmod(r, m);
}

ZP zsub(const ZP &a, const ZP &b, const Integer &m)
{
	ZP r(std::max(a.size(), b.size()), 0);
	for (std::size_t i = 0; i < a.size(); i++)
		r[i] += a[i];
	for (std::size_t i = 0; i < b.size(); i++)
		r[i] -= b[i];
	return zmod(r, m);
}

ZP lift_mp(const MP &a)
{
	ZP r;
	for (auto c : a)
		r.emplace_back(static_cast<unsigned long>(c));
	return r;
}

/* Lift F = g h (mod p), g monic, to modulus p^k. */
std::pair<ZP, ZP> hensel2(const Zp &P, const ZP &Ffull, const MP &g0, const MP &h0, int k,
                          const Integer &pk)
{
	auto [s, t] = P.ext_euclid(g0, h0);
	ZP g = lift_mp(g0), h = lift_mp(h0);
	Integer m = static_cast<unsigned long>(P.p);
	for (int j = 1; j < k; j++) {
		Integer mp = m * static_cast<unsigned long>(P.p);
		ZP e = zsub(zmod(Ffull, mp), zmul(g, h, mp), mp);
		for (auto &c : e)
			c /= m;
		MP em = P.reduce(e);
		auto [q, dg] = P.divmodp(P.mulp(t, em), g0);
		MP dh = P.addp(P.mulp(s, em), P.mulp(q, h0));
		ZP zdg = lift_mp(dg), zdh = lift_mp(dh);
		for (auto &c : zdg)
			c *= m;
		for (auto &c : zdh)
			c *= m;
		ZP ng(std::max(g.size(), zdg.size()), 0), nh(std::max(h.size(), zdh.size()), 0);
		for (std::size_t i = 0; i < g.size(); i++)
			ng[i] += g[i];
		for (std::size_t i = 0; i < zdg.size(); i++)
			ng[i] += zdg[i];
		for (std::size_t i = 0; i < h.size(); i++)
			nh[i] += h[i];
		for (std::size_t i = 0; i < zdh.size(); i++)
			nh[i] += zdh[i];
		g = zmod(ng, mp);
		h = zmod(nh, mp);
		m = mp;
	}
	(void)pk;
	return {g, h};
}

/* F = lc * prod(us) mod p; returns the us lifted (monic) modulo p^k. */
void hensel_multi(const Zp &P, const ZP &F, const std::vector<MP> &us, int k, const Integer &pk,
                  std::vector<ZP> &out)
{
	if (us.size() == 1) {
		/* the single monic factor is F / lc modulo p^k */
		Integer lc = F.back(), inv;
		mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
		ZP r(F);
		for (auto &c : r)
			c *= inv;
		out.push_back(zmod(r, pk));
		return;
	}
	std::size_t half = us.size() / 2;
	std::vector<MP> A(us.begin(), us.begin() + half), B(us.begin() + half, us.end());
	MP g{1}, h{1};
	for (const auto &u : A)
		g = P.mulp(g, u);
	for (const auto &u : B)
		h = P.mulp(h, u);
	MP lcm{P.reduce(ZP{F.back()})};
	h = P.mulp(h, lcm);
	auto [G, H] = hensel2(P, F, g, h, k, pk);
	hensel_multi(P, G, A, k, pk, out);
	hensel_multi(P, H, B, k, pk, out);
}

std::vector<unsigned long> small_primes()
{
	std::vector<unsigned long> ps;
	for (unsigned long n = 3; ps.size() < 400; n += 2) {
		bool prime = true;
		for (auto q : ps) {
			if (q * q > n)
				break;
			if (n % q == 0) {
				prime = false;
				break;
			}
		}
		if (prime)
			ps.push_back(n);
	}
	return ps;
}

bool divides_exact(const ZP &g, const ZP &f, ZP &quot)
{
	Poly pf = Poly::from_integers(f), pg = Poly::from_integers(g);
	auto [q, r] = Poly::divmod(pf, pg);
	if (!r.is_zero())
		return false;
	quot.clear();
	for (const auto &c : q.coeffs()) {
		if (c.get_den() != 1)
			return false;
		quot.push_back(c.get_num());
	}
	return true;
}

ZP primitive_part(ZP a)
{
	Integer g = 0;
	for (const auto &c : a)
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
	if (a.back() < 0)
		g = -g;
	for (auto &c : a)
		c /= g;
	return a;
}

} // namespace

std::vector<std::vector<Integer>> factor_squarefree(const std::vector<Integer> &f0)
{
	ZP f = primitive_part(f0);
	ztrim(f);
	int n = static_cast<int>(f.size()) - 1;
	if (n < 1)
		throw PreconditionViolated("factor_squarefree: degree < 1");
	if (n == 1)
		return {f};

	const auto primes = small_primes();
	for (auto p : primes) {
		Zp P{p};
		Integer lcmod;
		mpz_fdiv_r_ui(lcmod.get_mpz_t(), f.back().get_mpz_t(), p);
		if (lcmod == 0)
			continue;
		MP fp = P.reduce(f);
		if (Zp::deg(P.gcdp(fp, P.derivative(fp))) > 0)
			continue;

		std::mt19937_64 rng(0x5eed0000ULL + p);
		std::vector<MP> us;
		for (auto &[g, d] : distinct_degree(P, P.monic(fp)))
			equal_degree(P, g, d, rng, us);
		if (us.size() == 1)
			return {f};
		std::sort(us.begin(), us.end());

		/* Mignotte-type bound on factor coefficients */
		Integer norm2 = 0;
		for (const auto &c : f)
			norm2 += c * c;
		Integer norm = sqrt(norm2) + 1;
		Integer bound = 2 * abs(f.back()) * norm;
		mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
		int k = 1;
		Integer pk = static_cast<unsigned long>(p);
		while (pk <= 2 * bound) {
			pk *= static_cast<unsigned long>(p);
			k++;
		}

		std::vector<ZP> lifted;
		hensel_multi(P, zmod(f, pk), us, k, pk, lifted);

		std::vector<std::vector<Integer>> found;
		std::vector<ZP> remaining = lifted;
		ZP rest = f;
		std::size_t s = 1;
		while (2 * s <= remaining.size()) {
			bool progress = false;
			std::vector<std::size_t> idx(s);
			for (std::size_t i = 0; i < s; i++)
				idx[i] = i;
			while (true) {
				ZP g{rest.back()};
				for (auto i : idx)
					g = zmul(g, remaining[i], pk);
				Integer half = pk / 2;
				for (auto &c : g)
					if (c > half)
						c -= pk;
				ztrim(g);
				ZP q;
				if (g.size() > 1 && divides_exact(primitive_part(g), rest, q)) {
					found.push_back(primitive_part(g));
					rest = primitive_part(q);
					std::vector<ZP> nr;
					for (std::size_t i = 0; i < remaining.size(); i++)
						if (std::find(idx.begin(), idx.end(), i) == idx.end())
							nr.push_back(remaining[i]);
					remaining = std::move(nr);
					progress = true;
					break;
				}
				/* next combination */
				std::size_t j = s;
				while (j > 0 && idx[j - 1] == remaining.size() - s + j - 1)
					j--;
				if (j == 0)
					break;
				idx[j - 1]++;
				for (std::size_t t = j; t < s; t++)
					idx[t] = idx[t - 1] + 1;
			}
			if (!progress)
				s++;
		}
		if (rest.size() > 1)
			found.push_back(primitive_part(rest));
		std::sort(found.begin(), found.end(), [](const ZP &a, const ZP &b) {
			if (a.size() != b.size())
				return a.size() < b.size();
			return a < b;
		});
		return found;
	}
	throw Error("factor_squarefree: no suitable prime");
}

} // namespace valsat
