#ifndef HORNCODE_HORNCODE_HPP
#define HORNCODE_HORNCODE_HPP

#include "codes.hpp"
#include "divisor.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "format.hpp"
#include "horn.hpp"
#include "linalg.hpp"
#include "partition.hpp"
#include "poly.hpp"
#include "poly_matrix.hpp"
#include "projective.hpp"
#include "rational.hpp"
#include "symmetric.hpp"
#include "verify.hpp"

#endif
