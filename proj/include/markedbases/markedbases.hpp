#pragma once

#include "markedbases/rational.hpp"
#include "markedbases/monomial.hpp"
#include "markedbases/coeff_poly.hpp"
#include "markedbases/polynomial.hpp"
#include "markedbases/text.hpp"
#include "markedbases/ideal.hpp"
#include "markedbases/linalg.hpp"
#include "markedbases/marked.hpp"
#include "markedbases/parallel.hpp"
#include "markedbases/criterion.hpp"
#include "markedbases/homog.hpp"
#include "markedbases/oracle.hpp"
#include "markedbases/scheme.hpp"
#include "markedbases/hilbert.hpp"
#include "markedbases/io.hpp"
