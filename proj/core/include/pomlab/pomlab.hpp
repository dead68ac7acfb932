#pragma once

#include "pomlab/directoid.hpp"
#include "pomlab/dm.hpp"
#include "pomlab/effect_algebra.hpp"
#include "pomlab/enumerate.hpp"
#include "pomlab/fixtures.hpp"
#include "pomlab/forbidden.hpp"
#include "pomlab/formula.hpp"
#include "pomlab/io.hpp"
#include "pomlab/poset.hpp"
#include "pomlab/types.hpp"
