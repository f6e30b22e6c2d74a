#pragma once
// Command-line front end: enumerate, kappa, singularities, verify, bench.
//
// Exit codes: 0 success, 1 failed verification or runtime error, 2 usage error.

#include "qkernel/models.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace qkernel {

inline constexpr int kJsonSchemaVersion = 1;

/// First eleven terms of each model's counting sequence as tabulated in the literature.
const std::vector<long>& reference_sequence(ModelId model);

/// S_0..S_{N-1} by method "fast", "iterated" or "naive".
std::vector<mpz_class> enumerate_sequence(ModelId model, int N, const std::string& method);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace qkernel
