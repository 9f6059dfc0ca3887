#ifndef ABELIAN_ABELIAN_HPP_
#define ABELIAN_ABELIAN_HPP_

#include "complexity.hpp"
#include "diagnosis.hpp"
#include "factor_graph.hpp"
#include "generator.hpp"
#include "io.hpp"
#include "lemmas.hpp"
#include "parikh.hpp"
#include "periodicity.hpp"
#include "search.hpp"
#include "triples.hpp"
#include "word.hpp"

#endif  // ABELIAN_ABELIAN_HPP_
