#pragma once

#include "tropic/errors.hpp"
#include "tropic/rational.hpp"
#include "tropic/linalg.hpp"
#include "tropic/polyhedral.hpp"
#include "tropic/cone.hpp"
#include "tropic/fan.hpp"
#include "tropic/curve.hpp"
#include "tropic/refine.hpp"
#include "tropic/degeneration.hpp"
#include "tropic/defspace.hpp"
#include "tropic/wellspaced.hpp"
#include "tropic/dot.hpp"
#include "tropic/io.hpp"
