#pragma once

#include "bfa/anf.hpp"
#include "bfa/boolean_function.hpp"
#include "bfa/characterizations.hpp"
#include "bfa/combinatorics.hpp"
#include "bfa/geometry.hpp"
#include "bfa/influence.hpp"
#include "bfa/oracle.hpp"
#include "bfa/rational.hpp"
#include "bfa/report.hpp"
#include "bfa/spectra.hpp"
#include "bfa/subsets.hpp"
