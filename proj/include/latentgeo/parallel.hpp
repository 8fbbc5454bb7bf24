#pragma once

#include <cstddef>
#include <functional>

namespace latentgeo {

/// Worker count used by parallel_for. Defaults to the hardware concurrency,
/// overridable through LATENTGEO_THREADS or set_thread_count.
unsigned thread_count();
void set_thread_count(unsigned threads);

/// Runs body(i) for i in [0, count). Bodies must write only to slot i of
/// their output. The first exception (lowest index) is rethrown after all
/// workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace latentgeo
