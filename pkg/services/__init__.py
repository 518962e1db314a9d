# Módulo de serviços