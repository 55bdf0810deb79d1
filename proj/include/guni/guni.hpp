#pragma once

// Exact-arithmetic engine deciding equivariant unirationality of del Pezzo
// surface models (degree >= 3) under finite cyclotomic matrix actions, with
// obstruction classification of the fixed-point-free abelian witnesses.

#include "guni/binary_form.hpp"
#include "guni/classify.hpp"
#include "guni/cyclotomic.hpp"
#include "guni/errors.hpp"
#include "guni/families.hpp"
#include "guni/fixed_locus.hpp"
#include "guni/group.hpp"
#include "guni/io.hpp"
#include "guni/lines.hpp"
#include "guni/matrix.hpp"
#include "guni/polynomial.hpp"
#include "guni/projective.hpp"
#include "guni/rational.hpp"
#include "guni/surface.hpp"
