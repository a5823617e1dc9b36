#pragma once

// Everything except the JSON file formats, which live in geocover/io.hpp
// and need nlohmann/json on the include path.

#include "geocover/constructions.hpp"
#include "geocover/disk_sweep.hpp"
#include "geocover/disk_traverse.hpp"
#include "geocover/error.hpp"
#include "geocover/geom.hpp"
#include "geocover/index_set.hpp"
#include "geocover/inverse.hpp"
#include "geocover/neighbors.hpp"
#include "geocover/oracle.hpp"
#include "geocover/perturb.hpp"
#include "geocover/pipeline.hpp"
#include "geocover/polygon_arrangement.hpp"
#include "geocover/setcover.hpp"
#include "geocover/svg.hpp"
#include "geocover/sweep.hpp"
#include "geocover/translate.hpp"
