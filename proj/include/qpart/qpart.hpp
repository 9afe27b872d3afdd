#pragma once

#include "qpart/contfrac.hpp"
#include "qpart/divisors.hpp"
#include "qpart/errors.hpp"
#include "qpart/field.hpp"
#include "qpart/integer.hpp"
#include "qpart/oracle.hpp"
#include "qpart/parity.hpp"
#include "qpart/partition.hpp"
#include "qpart/render.hpp"
#include "qpart/search.hpp"
#include "qpart/serialize.hpp"
#include "qpart/tables.hpp"
