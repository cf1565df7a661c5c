#pragma once

#include "cgraph/bits.hpp"
#include "cgraph/catalog.hpp"
#include "cgraph/clique.hpp"
#include "cgraph/commuting.hpp"
#include "cgraph/family.hpp"
#include "cgraph/field.hpp"
#include "cgraph/genus.hpp"
#include "cgraph/graph.hpp"
#include "cgraph/group.hpp"
#include "cgraph/group_io.hpp"
#include "cgraph/heawood.hpp"
#include "cgraph/planarity.hpp"
#include "cgraph/report.hpp"
#include "cgraph/subgroups.hpp"
#include "cgraph/suites.hpp"
