#pragma once

#include "normality/canonical.hpp"
#include "normality/constructions.hpp"
#include "normality/enumeration.hpp"
#include "normality/errors.hpp"
#include "normality/formulas.hpp"
#include "normality/graph.hpp"
#include "normality/invariants.hpp"
#include "normality/verify.hpp"
