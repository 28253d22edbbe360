#pragma once

/// Everything in one include.

#include "cdindex/barycentric.hpp"
#include "cdindex/cd_polynomial.hpp"
#include "cdindex/corpus.hpp"
#include "cdindex/error.hpp"
#include "cdindex/eulerian.hpp"
#include "cdindex/families.hpp"
#include "cdindex/flag.hpp"
#include "cdindex/gorenstein.hpp"
#include "cdindex/numeric.hpp"
#include "cdindex/operators.hpp"
#include "cdindex/phi.hpp"
#include "cdindex/poset.hpp"
#include "cdindex/poset_json.hpp"
#include "cdindex/shelling.hpp"
#include "cdindex/simplicial.hpp"
#include "cdindex/stanley.hpp"
#include "cdindex/subset.hpp"
