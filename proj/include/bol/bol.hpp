#pragma once

#include "bol/algebra.hpp"
#include "bol/axioms.hpp"
#include "bol/boltext.hpp"
#include "bol/catalog.hpp"
#include "bol/geometry.hpp"
#include "bol/ideals.hpp"
#include "bol/levi.hpp"
#include "bol/structure.hpp"
