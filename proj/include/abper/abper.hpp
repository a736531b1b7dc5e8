#ifndef ABPER_ABPER_HPP
#define ABPER_ABPER_HPP

#include "error.hpp"
#include "words.hpp"
#include "matrix2.hpp"
#include "morphism.hpp"
#include "matrix.hpp"
#include "abelian.hpp"
#include "rank1.hpp"
#include "lift.hpp"
#include "periodicity.hpp"
#include "classifier.hpp"
#include "report.hpp"

#endif // ABPER_ABPER_HPP
