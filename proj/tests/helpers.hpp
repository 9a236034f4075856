#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

#include "umbral/rational.hpp"
#include "umbral/sequence.hpp"
#include "umbral/series.hpp"

namespace umbral {

template <class Tag>
std::ostream& operator<<(std::ostream& os, const IndexedSequence<Tag>& s) {
    os << '(';
    for (std::size_t i = 1; i <= s.order(); ++i) os << (i > 1 ? "," : "") << s[i];
    return os << ')';
}

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& f) {
    os << '[';
    for (std::size_t i = 0; i <= f.order(); ++i) os << (i > 0 ? "," : "") << f[i];
    return os << ']';
}

}  // namespace umbral

namespace testing {

inline umbral::MomentSequence seq(std::initializer_list<umbral::Rational> xs) {
    return umbral::MomentSequence(std::vector<umbral::Rational>(xs));
}

inline umbral::MultiplierSequence mult(std::initializer_list<umbral::Rational> xs) {
    return umbral::MultiplierSequence(std::vector<umbral::Rational>(xs));
}

inline umbral::TruncatedSeries ser(std::initializer_list<umbral::Rational> xs) {
    return umbral::TruncatedSeries(std::vector<umbral::Rational>(xs));
}

}  // namespace testing
