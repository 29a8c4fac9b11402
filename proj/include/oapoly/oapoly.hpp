#ifndef OAPOLY_OAPOLY_HPP
#define OAPOLY_OAPOLY_HPP

#include "algebra.hpp"
#include "exact_matrix.hpp"
#include "format.hpp"
#include "harness.hpp"
#include "lattice.hpp"
#include "orthogonality.hpp"
#include "polynomial.hpp"
#include "powers_form.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "sharpness.hpp"

#endif  // OAPOLY_OAPOLY_HPP
