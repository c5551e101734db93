#pragma once

#include "polysym/errors.hpp"
#include "polysym/polycore.hpp"
#include "polysym/invariant_ring.hpp"
#include "polysym/linalg.hpp"
#include "polysym/free_algebra.hpp"
#include "polysym/notation.hpp"
#include "polysym/relations.hpp"
#include "polysym/schur.hpp"
#include "polysym/charring.hpp"
#include "polysym/parallel.hpp"
#include "polysym/congruence_tables.hpp"
#include "polysym/ideal_lab.hpp"
#include "polysym/checks.hpp"
#include "polysym/report.hpp"
