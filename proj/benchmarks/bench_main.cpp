// Local main so only the shared benchmark library is required.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
