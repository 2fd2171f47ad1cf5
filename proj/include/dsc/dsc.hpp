#pragma once

#include "dsc/caps.hpp"
#include "dsc/class_xd.hpp"
#include "dsc/complex.hpp"
#include "dsc/connection.hpp"
#include "dsc/curvature.hpp"
#include "dsc/errors.hpp"
#include "dsc/experiments.hpp"
#include "dsc/generators.hpp"
#include "dsc/graph.hpp"
#include "dsc/io.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"
#include "dsc/refinement_operator.hpp"
#include "dsc/report.hpp"
#include "dsc/rng.hpp"
#include "dsc/roots.hpp"
#include "dsc/simplex.hpp"
#include "dsc/svg.hpp"
#include "dsc/wu.hpp"
