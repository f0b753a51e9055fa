#pragma once

#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/rng.hpp"
#include "cubrep/numeric.hpp"
#include "cubrep/coloring.hpp"
#include "cubrep/interval.hpp"
#include "cubrep/cube_builder.hpp"
#include "cubrep/oracle.hpp"
#include "cubrep/crossing.hpp"
#include "cubrep/random_lab.hpp"
#include "cubrep/io.hpp"
