#pragma once

#include "hscurves/bounds.hpp"
#include "hscurves/census.hpp"
#include "hscurves/core.hpp"
#include "hscurves/enumerate.hpp"
#include "hscurves/families.hpp"
#include "hscurves/oracles.hpp"
#include "hscurves/render.hpp"
#include "hscurves/surfaces.hpp"
