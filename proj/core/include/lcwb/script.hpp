#ifndef LCWB_SCRIPT_HPP
#define LCWB_SCRIPT_HPP

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "lcwb/graded.hpp"
#include "lcwb/modobj.hpp"

namespace lcwb {

// ----- AST -----

struct SrcSpan {
  int line = 0, col = 0;
};

struct RingDecl {
  SrcSpan span;
  std::string name;
  uint32_t characteristic = 32003;
  std::vector<std::string> vars;
};

struct AlgebraDecl {
  SrcSpan span;
  std::string name;
  int dim = 1;
  std::vector<uint32_t> unit;
  std::vector<std::vector<std::vector<uint32_t>>> mul;
};

// values appearing in declarations and task arguments
struct ScriptValue;

struct ModuleExprCoker {
  std::vector<std::vector<std::string>> rows;  // polynomial sources, row = generator
  std::vector<Multideg> shifts;                // optional generator degrees
  std::string algebra;                         // optional algebra name
  std::vector<std::vector<std::vector<std::string>>> action;  // per basis elt: rows = images
};

struct ModuleExprFree {
  int rank = 1;
};

struct ModuleExprSum {
  std::shared_ptr<ScriptValue> left, right;
};

struct BoxLit {
  int lo = -2, hi = 2;
};

struct ScriptValue {
  SrcSpan span;
  using ListT = std::vector<ScriptValue>;
  std::variant<std::monostate,
               long,                          // integer
               std::string,                   // string literal
               std::vector<std::string>,      // ideal literal: generator sources
               ModuleExprCoker, ModuleExprFree, ModuleExprSum,
               BoxLit, ListT,
               Multideg>                      // tuple literal
      v;
  std::string ref;  // identifier reference when nonempty
};

struct IdealDecl {
  SrcSpan span;
  std::string name;
  std::vector<std::string> gens;  // polynomial sources
};

struct ModuleDecl {
  SrcSpan span;
  std::string name;
  ScriptValue expr;
};

struct TaskStmt {
  SrcSpan span;
  std::string name;
  std::vector<std::pair<std::string, ScriptValue>> args;  // key may be empty
};

struct WorkbenchScript {
  std::vector<RingDecl> rings;
  std::vector<AlgebraDecl> algebras;
  std::vector<IdealDecl> ideals;
  std::vector<ModuleDecl> modules;
  std::vector<TaskStmt> tasks;
  std::vector<int> order;  // statement kinds in source order (0..4)
};

// parse + pretty-print; parse errors carry line/column via Error(SyntaxError...)
WorkbenchScript parse_script(const std::string& text);
std::string print_script(const WorkbenchScript& s);

// ----- typed session -----

struct Session {
  RingPtr ring;
  std::map<std::string, AlgebraSpec> algebras;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, ModulePtr> modules;
};

// builds the typed session, checking names and shapes
Session elaborate(const WorkbenchScript& s);

// helpers shared with the task runner
Poly parse_polynomial(const RingPtr& ring, const std::string& src);
Ideal value_as_ideal(const Session& ses, const ScriptValue& v);
ModulePtr value_as_module(const Session& ses, const ScriptValue& v);

}  // namespace lcwb

#endif
