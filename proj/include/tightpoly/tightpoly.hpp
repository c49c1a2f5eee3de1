#pragma once

#include "tightpoly/errors.hpp"
#include "tightpoly/word.hpp"
#include "tightpoly/presentation.hpp"
#include "tightpoly/group.hpp"
#include "tightpoly/coset_enumeration.hpp"
#include "tightpoly/number_theory.hpp"
#include "tightpoly/presentations.hpp"
#include "tightpoly/sggi.hpp"
#include "tightpoly/families.hpp"
#include "tightpoly/polyhedron.hpp"
#include "tightpoly/classify.hpp"
#include "tightpoly/oracle.hpp"
#include "tightpoly/serialization.hpp"
