#pragma once

#include "rainbow/bigint.hpp"
#include "rainbow/census.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/regularize.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"
#include "rainbow/walks.hpp"
