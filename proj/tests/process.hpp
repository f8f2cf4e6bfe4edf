/*
 *   Copyright 2026 The rtop Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs a shell command and captures stdout and the exit status.

#ifndef RTOP_TESTS_PROCESS_HPP
#define RTOP_TESTS_PROCESS_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace process {

struct Result {
	int status = -1;
	std::string out;
};

inline Result run(const std::string &command)
{
	FILE *pipe = ::popen(command.c_str(), "r");
	if (!pipe)
		throw std::runtime_error("popen failed: " + command);
	Result r;
	std::array<char, 4096> buf{};
	std::size_t got;
	while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
		r.out.append(buf.data(), got);
	const int raw = ::pclose(pipe);
	r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
	return r;
}

} // namespace process

#endif // RTOP_TESTS_PROCESS_HPP
