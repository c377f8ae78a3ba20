#pragma once

#include "wanderer/config.hpp"
#include "wanderer/dynamics.hpp"
#include "wanderer/engine.hpp"
#include "wanderer/environment.hpp"
#include "wanderer/errors.hpp"
#include "wanderer/learning.hpp"
#include "wanderer/model.hpp"
#include "wanderer/plotdata.hpp"
#include "wanderer/presets.hpp"
#include "wanderer/random.hpp"
#include "wanderer/sweep.hpp"
#include "wanderer/trace_io.hpp"
