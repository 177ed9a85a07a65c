/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The valsat Authors
 */

/* Compares CLI output with the golden files; --update rewrites them. */

#include "golden.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	if (argc < 4) {
		std::cerr << "usage: valsat_golden CLI GOLDEN_DIR FIXTURE_DIR [--update]\n";
		return 2;
	}
	const std::string exe = argv[1], dir = argv[2], fixtures = argv[3];
	const bool update = argc > 4 && std::string(argv[4]) == "--update";
	int failures = 0;
	for (const auto &c : golden::load_cases(dir + "/cases.txt")) {
		const std::string got = golden::run(exe, c, fixtures), path = dir + "/" + c.name + ".out";
		if (update) {
			std::ofstream(path, std::ios::binary) << got;
			continue;
		}
		const bool ok = got == golden::read(path);
		std::cout << (ok ? "ok   " : "FAIL ") << c.name << "\n";
		failures += !ok;
	}
	return failures ? 1 : 0;
}
