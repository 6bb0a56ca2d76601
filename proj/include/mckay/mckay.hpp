#pragma once

#include "exact.hpp"
#include "group.hpp"
#include "groebner.hpp"
#include "lp.hpp"
#include "cone.hpp"
#include "fan.hpp"
#include "constellation.hpp"
#include "hilbert_scheme.hpp"
#include "io.hpp"
#include "reproduce.hpp"
