#pragma once

#include "braid.hpp"
#include "conjugacy.hpp"
#include "cyclic.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "gn.hpp"
#include "lattice_closure.hpp"
#include "oracle.hpp"
#include "powers.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "semidirect.hpp"
#include "structure.hpp"
#include "text.hpp"
#include "torus.hpp"
