#pragma once

#include "gf.hpp"
#include "poly.hpp"
#include "lattice.hpp"
#include "congruence.hpp"
#include "building.hpp"
#include "homology.hpp"
#include "oracle.hpp"
