#pragma once

#include <initializer_list>
#include <string_view>

#include "hetero/kform.hpp"
#include "hetero/scalar.hpp"

namespace hetero::testing {

inline Scalar var(std::string_view name) { return Scalar::variable(name); }
inline Scalar q(long num, long den = 1) { return Scalar(Rational(num, den)); }
inline KForm e(int dim, std::initializer_list<int> indices) { return KForm::basis(dim, indices); }

}  // namespace hetero::testing
