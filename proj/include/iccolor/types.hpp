#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace icc {

using VertexId = int;
using Dart = int;

inline Dart twin(Dart d) { return d ^ 1; }
inline int edge_of(Dart d) { return d >> 1; }
inline Dart dart_of_edge(int e) { return e << 1; }

// Input violates a documented precondition or a file format.
struct invalid_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A legal but unwanted outcome: infeasible oracle query, generator out of
// retry budget, audit anomaly.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A state the underlying theorem rules out. Reaching one means either a bug
// or a counterexample; callers must not swallow it.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line,
                                      const std::string& msg) {
    std::ostringstream os;
    os << "invariant violated: " << msg << " [" << expr << " at " << file << ":" << line << "]";
    throw internal_error(os.str());
}
}  // namespace detail

// Always-on invariant check (independent of NDEBUG).
#define ICC_CHECK(cond, msg)                                              \
    do {                                                                  \
        if (!(cond)) ::icc::detail::check_failed(#cond, __FILE__, __LINE__, (msg)); \
    } while (0)

}  // namespace icc
