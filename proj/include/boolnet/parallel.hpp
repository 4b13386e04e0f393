#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace boolnet
{

/*! \brief Worker count from BOOLNET_JOBS, or 1. */
inline unsigned default_jobs()
{
  if ( char const* env = std::getenv( "BOOLNET_JOBS" ) )
  {
    try
    {
      auto const n = std::stoi( env );
      if ( n > 0 )
      {
        return static_cast<unsigned>( n );
      }
    }
    catch ( ... )
    {
    }
  }
  return 1u;
}

/*! \brief Splits [0, n) into `jobs` contiguous chunks and calls `fn( chunk, begin, end )` on each.

  Chunk boundaries depend only on `n` and `jobs`; callers reduce per-chunk
  results in chunk order to stay deterministic.  The first exception (by
  chunk index) is rethrown.
*/
template<typename Fn>
void parallel_chunks( std::size_t n, unsigned jobs, Fn&& fn )
{
  jobs = std::max( 1u, std::min<unsigned>( jobs, static_cast<unsigned>( std::max<std::size_t>( n, 1 ) ) ) );
  auto bounds = [&]( unsigned c ) { return n * c / jobs; };
  if ( jobs == 1 )
  {
    fn( 0u, std::size_t{ 0 }, n );
    return;
  }
  std::vector<std::exception_ptr> errors( jobs );
  std::vector<std::thread> workers;
  workers.reserve( jobs );
  for ( unsigned c = 0; c < jobs; ++c )
  {
    workers.emplace_back( [&, c] {
      try
      {
        fn( c, bounds( c ), bounds( c + 1 ) );
      }
      catch ( ... )
      {
        errors[c] = std::current_exception();
      }
    } );
  }
  for ( auto& w : workers )
  {
    w.join();
  }
  for ( auto& e : errors )
  {
    if ( e )
    {
      std::rethrow_exception( e );
    }
  }
}

} // namespace boolnet
