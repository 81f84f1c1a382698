#ifndef POLYBOUND_POLYBOUND_HPP
#define POLYBOUND_POLYBOUND_HPP

#include "polybound/bipoly.hpp"
#include "polybound/criteria.hpp"
#include "polybound/degree.hpp"
#include "polybound/error.hpp"
#include "polybound/field.hpp"
#include "polybound/multipoly.hpp"
#include "polybound/multivariate.hpp"
#include "polybound/newton.hpp"
#include "polybound/oracle.hpp"
#include "polybound/parser.hpp"
#include "polybound/uni_factor.hpp"
#include "polybound/unipoly.hpp"

#endif  // POLYBOUND_POLYBOUND_HPP
