// Umbrella header.
#pragma once

#include "curvesing/corpus.hpp"
#include "curvesing/errors.hpp"
#include "curvesing/explorer.hpp"
#include "curvesing/integer.hpp"
#include "curvesing/invariants.hpp"
#include "curvesing/linalg.hpp"
#include "curvesing/mora.hpp"
#include "curvesing/numberfield.hpp"
#include "curvesing/omega.hpp"
#include "curvesing/parser.hpp"
#include "curvesing/polynomial.hpp"
#include "curvesing/puiseux.hpp"
#include "curvesing/qfactor.hpp"
#include "curvesing/quotient.hpp"
#include "curvesing/rational.hpp"
#include "curvesing/series.hpp"
#include "curvesing/univariate.hpp"
