"""graphflow: prompt-driven construction of parametric dataflow models.

Subpackages:
  geometry      closed-form primitives, transforms, meshing
  registry      component catalog, documentation export, lexical search
  engine        dataflow graph, tree-structured values, incremental evaluation
  dsl           workflow-construction script: parser, validator, executor
  orchestrator  prompt assembly, model providers, generate-validate-retry loop
  service       HTTP API, command line, benchmark suite
"""

__version__ = "0.1.0"
