#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cubeiso
{

/// std::thread::hardware_concurrency(), at least 1.
unsigned default_jobs() noexcept;

/*! \brief Splits [0, count) into at most `jobs` contiguous ranges, runs
  `body(acc, begin, end)` on each with its own copy of `identity`, then
  folds the partial results left to right with `merge(total, part)`.

  The fold order depends only on the range order, so any merge that is
  associative gives the same result for every job count.
*/
template <class Acc, class Body, class Merge>
Acc parallel_reduce( std::size_t count, unsigned jobs, const Acc& identity, Body body, Merge merge )
{
  if ( jobs == 0 )
    jobs = default_jobs();
  const std::size_t workers = std::max<std::size_t>( 1, std::min<std::size_t>( jobs, count ) );
  if ( workers == 1 )
  {
    Acc acc = identity;
    body( acc, std::size_t{ 0 }, count );
    return acc;
  }
  std::vector<Acc> partial( workers, identity );
  std::vector<std::exception_ptr> errors( workers );
  std::vector<std::thread> threads;
  threads.reserve( workers );
  for ( std::size_t w = 0; w < workers; ++w )
  {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * ( w + 1 ) / workers;
    threads.emplace_back( [&, w, begin, end] {
      try
      {
        body( partial[w], begin, end );
      }
      catch ( ... )
      {
        errors[w] = std::current_exception();
      }
    } );
  }
  for ( auto& t : threads )
    t.join();
  for ( const auto& e : errors )
  {
    if ( e )
      std::rethrow_exception( e );
  }
  Acc total = std::move( partial.front() );
  for ( std::size_t w = 1; w < workers; ++w )
    merge( total, std::move( partial[w] ) );
  return total;
}

} // namespace cubeiso
