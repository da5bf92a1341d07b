#pragma once

#include "hyperlie/bell.hpp"
#include "hyperlie/cocycle.hpp"
#include "hyperlie/curve.hpp"
#include "hyperlie/families.hpp"
#include "hyperlie/genfun.hpp"
#include "hyperlie/laurent.hpp"
#include "hyperlie/paramfrac.hpp"
#include "hyperlie/parampoly.hpp"
#include "hyperlie/parse.hpp"
#include "hyperlie/ratfun.hpp"
#include "hyperlie/rational.hpp"
#include "hyperlie/reduction.hpp"
#include "hyperlie/ring.hpp"
#include "hyperlie/truncseries.hpp"
#include "hyperlie/universe.hpp"
