// zg/zg.hpp
//
// Umbrella header for the whole workbench.

#pragma once

#include "zg/element_io.hpp"
#include "zg/errors.hpp"
#include "zg/group.hpp"
#include "zg/group_ring.hpp"
#include "zg/integers.hpp"
#include "zg/numth.hpp"
#include "zg/perm.hpp"
#include "zg/relations.hpp"
#include "zg/report.hpp"
#include "zg/sampling.hpp"
#include "zg/sieve.hpp"
