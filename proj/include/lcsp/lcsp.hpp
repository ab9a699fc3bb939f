#pragma once

#include "lcsp/covering.hpp"
#include "lcsp/error.hpp"
#include "lcsp/geometry.hpp"
#include "lcsp/k_cover.hpp"
#include "lcsp/obnoxious.hpp"
#include "lcsp/one_center.hpp"
#include "lcsp/oracles.hpp"
#include "lcsp/search.hpp"
