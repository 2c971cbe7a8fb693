#pragma once

#include "graceful/error.hpp"
#include "graceful/tree.hpp"
#include "graceful/profile.hpp"
#include "graceful/labeling.hpp"
#include "graceful/search.hpp"
#include "graceful/families.hpp"
#include "graceful/fixtures.hpp"
#include "graceful/probes.hpp"
#include "graceful/io.hpp"
