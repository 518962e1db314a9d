# Módulo de endpoints da API