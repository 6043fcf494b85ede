#pragma once

// Heavy Macdonald computations (degree 6 and 7 bases, e_n expansions) are
// memoized on disk.  Tests default the cache root to a directory next to
// the test binaries so repeated runs only pay the cost once; an explicit
// DHARMONIC_CACHE setting takes precedence.

#include <cstdlib>

#include "dharm/cache.hpp"

namespace {

struct TestCacheBootstrap {
  TestCacheBootstrap() {
    if (std::getenv("DHARMONIC_CACHE") == nullptr)
      dharm::CacheStore::set_global_root("dharm-cache");
  }
};
const TestCacheBootstrap test_cache_bootstrap;

}  // namespace
