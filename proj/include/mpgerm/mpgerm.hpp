#pragma once

#include "mpgerm/error.hpp"
#include "mpgerm/rational.hpp"
#include "mpgerm/monomial.hpp"
#include "mpgerm/poly.hpp"
#include "mpgerm/parse.hpp"
#include "mpgerm/localalg.hpp"
#include "mpgerm/linalg.hpp"
#include "mpgerm/icis.hpp"
#include "mpgerm/symrep.hpp"
#include "mpgerm/isotype.hpp"
#include "mpgerm/multipoint.hpp"
#include "mpgerm/invariants.hpp"
#include "mpgerm/report.hpp"
