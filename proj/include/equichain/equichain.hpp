#ifndef EQUICHAIN_EQUICHAIN_HPP
#define EQUICHAIN_EQUICHAIN_HPP

// Umbrella header.

#include "equichain/chains.hpp"
#include "equichain/field.hpp"
#include "equichain/groebner.hpp"
#include "equichain/inc.hpp"
#include "equichain/linalg_oracle.hpp"
#include "equichain/monomial.hpp"
#include "equichain/order_checks.hpp"
#include "equichain/orders.hpp"
#include "equichain/parse.hpp"
#include "equichain/polynomial.hpp"
#include "equichain/quadratic.hpp"

#endif  // EQUICHAIN_EQUICHAIN_HPP
