#pragma once

// Umbrella header.

#include "mnesor/errors.hpp"
#include "mnesor/rng.hpp"
#include "mnesor/grade.hpp"
#include "mnesor/fuzzy_set.hpp"
#include "mnesor/shapes.hpp"
#include "mnesor/set_format.hpp"
#include "mnesor/instance.hpp"
#include "mnesor/laws.hpp"
#include "mnesor/instances.hpp"
#include "mnesor/mutants.hpp"
#include "mnesor/expr.hpp"
#include "mnesor/parse.hpp"
#include "mnesor/eval.hpp"
#include "mnesor/simplify.hpp"
