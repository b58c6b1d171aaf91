#pragma once

// Umbrella header.

#include "degen/error.hpp"
#include "degen/qlinalg.hpp"
#include "degen/strata.hpp"
#include "degen/monodromy.hpp"
#include "degen/deligne.hpp"
#include "degen/lfun.hpp"
#include "degen/bundle.hpp"
#include "degen/workbench.hpp"
