#ifndef BCHZ_TEST_PRINT_HPP
#define BCHZ_TEST_PRINT_HPP

#include "bchz/assoc.hpp"
#include "bchz/freelie.hpp"
#include "bchz/matrix.hpp"
#include "bchz/weil.hpp"

#include <ostream>

namespace bchz {

inline void PrintTo(Rational const &a, std::ostream *os) { *os << a.str(); }
inline void PrintTo(WeilElement const &a, std::ostream *os) { *os << a.str(); }
inline void PrintTo(LieElement const &a, std::ostream *os) { *os << a.str(); }
inline void PrintTo(Word const &w, std::ostream *os)
{
	*os << w.str(*Alphabet::standard(2));
}
template <class S> void PrintTo(AssocPoly<S> const &a, std::ostream *os) { *os << a.str(); }
template <class S> void PrintTo(Matrix<S> const &a, std::ostream *os) { *os << a.str(); }

} // namespace bchz

#endif
