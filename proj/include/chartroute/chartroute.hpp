#pragma once

#include "chartroute/cost.hpp"
#include "chartroute/error.hpp"
#include "chartroute/genmap.hpp"
#include "chartroute/geo.hpp"
#include "chartroute/grid.hpp"
#include "chartroute/grid_cache.hpp"
#include "chartroute/iso8211.hpp"
#include "chartroute/json_io.hpp"
#include "chartroute/metrics.hpp"
#include "chartroute/pipeline.hpp"
#include "chartroute/render.hpp"
#include "chartroute/s57.hpp"
#include "chartroute/search.hpp"
#include "chartroute/smoothing.hpp"
