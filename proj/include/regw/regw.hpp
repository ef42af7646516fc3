#pragma once

// Proper 3-value edge weightings of regular graphs: constructive
// weighter, independent verifier and auditors, and an exhaustive oracle.

#include "regw/audit.hpp"
#include "regw/bipartite_weighting.hpp"
#include "regw/certificate.hpp"
#include "regw/cycle_weighting.hpp"
#include "regw/degeneracy.hpp"
#include "regw/dispatch.hpp"
#include "regw/errors.hpp"
#include "regw/graph.hpp"
#include "regw/graph_io.hpp"
#include "regw/independent_set.hpp"
#include "regw/matching.hpp"
#include "regw/oracle.hpp"
#include "regw/partition.hpp"
#include "regw/random_regular.hpp"
#include "regw/rational.hpp"
#include "regw/regular_weighting.hpp"
#include "regw/search.hpp"
#include "regw/verify.hpp"
#include "regw/weighting.hpp"
