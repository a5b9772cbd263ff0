#pragma once

#include "metaleib/element.hpp"
#include "metaleib/error.hpp"
#include "metaleib/expr.hpp"
#include "metaleib/invariants.hpp"
#include "metaleib/linalg.hpp"
#include "metaleib/maps.hpp"
#include "metaleib/parse.hpp"
#include "metaleib/permutation.hpp"
#include "metaleib/poly.hpp"
#include "metaleib/render.hpp"
#include "metaleib/scalar.hpp"
