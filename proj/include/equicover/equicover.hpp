#pragma once

#include "equicover/classic_partitions.hpp"
#include "equicover/covers.hpp"
#include "equicover/geometry.hpp"
#include "equicover/io.hpp"
#include "equicover/mass_model.hpp"
#include "equicover/massgen.hpp"
#include "equicover/nonspiral.hpp"
#include "equicover/spiral.hpp"
#include "equicover/svg.hpp"
#include "equicover/verify.hpp"
