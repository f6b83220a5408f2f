#include "cubeiso/parallel.hpp"

namespace cubeiso
{

unsigned default_jobs() noexcept
{
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

} // namespace cubeiso
