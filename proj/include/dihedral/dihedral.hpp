#ifndef DIHEDRAL_DIHEDRAL_HPP_
#define DIHEDRAL_DIHEDRAL_HPP_

#include "automata.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "normal_words.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "verify.hpp"
#include "word.hpp"

#endif  // DIHEDRAL_DIHEDRAL_HPP_
