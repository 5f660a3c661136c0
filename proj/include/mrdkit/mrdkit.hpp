#ifndef MRDKIT_MRDKIT_HPP
#define MRDKIT_MRDKIT_HPP

#include "mrdkit/field.hpp"
#include "mrdkit/linpoly.hpp"
#include "mrdkit/codes.hpp"
#include "mrdkit/duality.hpp"
#include "mrdkit/equivalence.hpp"
#include "mrdkit/text.hpp"

#endif // MRDKIT_MRDKIT_HPP
