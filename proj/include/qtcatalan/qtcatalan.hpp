#pragma once

#include "qtcatalan/bijections.hpp"
#include "qtcatalan/dyck_path.hpp"
#include "qtcatalan/error.hpp"
#include "qtcatalan/families.hpp"
#include "qtcatalan/identities.hpp"
#include "qtcatalan/labelled_graph.hpp"
#include "qtcatalan/labelled_tree.hpp"
#include "qtcatalan/parking.hpp"
#include "qtcatalan/plane_tree.hpp"
#include "qtcatalan/polynomial.hpp"
#include "qtcatalan/sequences.hpp"
#include "qtcatalan/verify.hpp"
