# Observability: run manifests
