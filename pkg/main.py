#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Punto de entrada de la línea de comandos: `map`, `analyze` y `verify`."""
import argparse
import logging
import sys
from typing import List, Optional

from config.config_loader import Config
from Controlador import AnalisisControlador, MapaControlador, VerificacionControlador


def construir_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gray-isometrias",
        description="Isometrías de Gray entre anillos Z_{2^k} y análisis de códigos de bloque",
    )
    subparsers = parser.add_subparsers(dest="comando", required=True)
    # Registrar los subcomandos de cada controlador
    MapaControlador.registrar(subparsers)
    AnalisisControlador.registrar(subparsers)
    VerificacionControlador.registrar(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    parser = construir_parser()
    args, resto = parser.parse_known_args(argv)
    if resto:
        # Algunas versiones de argparse dejan sin asignar la palabra de `map` si llega después de --k
        if getattr(args, "palabra", "") is None and len(resto) == 1 and not resto[0].startswith("-"):
            args.palabra = resto[0]
        else:
            parser.error(f"argumentos no reconocidos: {' '.join(resto)}")
    return args.funcion(args)


if __name__ == "__main__":
    sys.exit(main())
