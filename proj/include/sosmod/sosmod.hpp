#ifndef SOSMOD_SOSMOD_HPP
#define SOSMOD_SOSMOD_HPP

// Public entry point: count, full_distribution and the primitives they are
// built from (legendre, sqrt_mod_pk, factorize, ...).

#include "sosmod/compose.hpp"
#include "sosmod/errors.hpp"
#include "sosmod/formulas.hpp"
#include "sosmod/modarith.hpp"
#include "sosmod/oracle.hpp"

#endif  // SOSMOD_SOSMOD_HPP
