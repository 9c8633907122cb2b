#pragma once

#include "dedekind/error.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/poly_text.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/zpoly.hpp"
#include "dedekind/criteria.hpp"
#include "dedekind/order.hpp"
#include "dedekind/ideal.hpp"
#include "dedekind/indexform.hpp"
