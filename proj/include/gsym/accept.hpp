#ifndef GSYM_ACCEPT_HPP
#define GSYM_ACCEPT_HPP

#include <iosfwd>

namespace gsym {

// Runs the acceptance suite, printing one pass/fail line per criterion.
// Returns the number of failed criteria. `only` restricts to one criterion
// (1-based), 0 runs all.
int run_acceptance(unsigned seed, std::ostream& out, int only = 0);

} // namespace gsym

#endif
