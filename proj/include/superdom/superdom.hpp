#pragma once

#include "superdom/bounds.hpp"
#include "superdom/closed_forms.hpp"
#include "superdom/formats.hpp"
#include "superdom/generators.hpp"
#include "superdom/graph.hpp"
#include "superdom/oracle.hpp"
#include "superdom/rng.hpp"
#include "superdom/solver.hpp"
#include "superdom/trees.hpp"
#include "superdom/vertex_set.hpp"
