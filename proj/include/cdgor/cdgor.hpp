#pragma once

#include "cdgor/error.hpp"
#include "cdgor/poset.hpp"
#include "cdgor/simplicial.hpp"
#include "cdgor/flagvec.hpp"
#include "cdgor/homology.hpp"
#include "cdgor/realize.hpp"
#include "cdgor/io.hpp"
