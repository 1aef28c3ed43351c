// Everything at once.

#ifndef RELCOMM_RELCOMM_HPP_
#define RELCOMM_RELCOMM_HPP_

#include "bounds.hpp"
#include "catalog.hpp"
#include "collector.hpp"
#include "comm_stats.hpp"
#include "conjugacy.hpp"
#include "error.hpp"
#include "exact_ratio.hpp"
#include "group_table.hpp"
#include "io.hpp"
#include "isoclinism.hpp"
#include "report.hpp"
#include "selector.hpp"
#include "subgroup.hpp"
#include "subgroup_lattice.hpp"
#include "verify.hpp"

#endif
