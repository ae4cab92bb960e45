#pragma once

// The CLI operations as plain functions returning their output, so they can
// be tested without spawning a process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include "witt3/sweep.hpp"

#include <string>

namespace witt3 {

struct CommandOutput {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// alg "r": basis expansion of [x, y]; alg "s": canonical form of the coefficient of [x, y].
CommandOutput cmd_bracket(const std::string& alg, const std::string& x, const std::string& y);

/// id in {phi1, phi2} takes Der(S) expressions and prints one value.
/// id in {phi1bar, phi2bar} takes Der(R) expressions; mode is closed,
/// pullback, or both ("a == b", exit 1 when they differ).
CommandOutput cmd_cocycle(const std::string& id, const std::string& x, const std::string& y,
                          const std::string& mode);

/// JSON report of the named suite; exit 0 iff every check passes.
CommandOutput cmd_verify(const std::string& suite, const Range& range, unsigned jobs, bool timing = true);

/// Rows (k, l, value) of phi1bar/phi2bar on kind ee, ed or dd, sorted by (k, l).
/// format csv: header "k,l,value"; format json: {id, kind, range, rows: [{k, l, value}]}.
/// mode both emits the common value and exits 1 if any entry disagrees.
CommandOutput cmd_table(const std::string& id, const std::string& kind, const Range& range,
                        const std::string& format, const std::string& mode, unsigned jobs);

}  // namespace witt3
