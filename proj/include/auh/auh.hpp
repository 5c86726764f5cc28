#pragma once

#include "auh/ascent.hpp"
#include "auh/bounds.hpp"
#include "auh/classify.hpp"
#include "auh/code_tree.hpp"
#include "auh/codec.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/families.hpp"
#include "auh/grid.hpp"
#include "auh/io.hpp"
#include "auh/metrics.hpp"
#include "auh/moves.hpp"
#include "auh/random.hpp"
#include "auh/rational.hpp"
#include "auh/search.hpp"
#include "auh/verify.hpp"
