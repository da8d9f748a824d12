/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exlog {

/* Command-line surface. Exit codes: 0 for SAT / valid / true / accepted,
 * 1 for UNSAT / countermodel / false / rejected / inconsistent, 2 for
 * usage, parse, schema and budget errors. The library API and the CLI
 * compute through the same code paths.
 */

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exlog
