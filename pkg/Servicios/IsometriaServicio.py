#!/usr/bin/python
# -*- coding: utf-8 -*-
"""Comprobación exhaustiva de que un mapa de Gray preserva pesos (o distancias) símbolo a símbolo."""
import logging
from itertools import combinations

from Modelo.Anillo import Metrica
from Modelo.Codigo import ReporteIsometria, ViolacionIsometria
from Modelo.Mapa import TipoMapa
from Servicios.AnilloServicio import subtract, weight
from Servicios.GrayServicio import aplicar_mapa, simbolos_dominio

log = logging.getLogger(__name__)


def verify_isometry(
    mapa: TipoMapa,
    metrica_origen: Metrica,
    metrica_destino: Metrica,
    por_distancia: bool = False,
) -> ReporteIsometria:
    """
    Recorre todo el dominio del mapa (un símbolo) y compara peso_origen(u) con
    peso_destino(mapa(u)). Con por_distancia=True compara d(x, y) con
    d(mapa(x), mapa(y)) para todos los pares de símbolos.
    """
    simbolos = simbolos_dominio(mapa)
    imagenes = [aplicar_mapa(mapa, s) for s in simbolos]
    violaciones = []

    if por_distancia:
        casos = list(combinations(range(len(simbolos)), 2))
        for i, j in casos:
            d_origen = weight(subtract(simbolos[i], simbolos[j]), metrica_origen)
            d_destino = weight(subtract(imagenes[i], imagenes[j]), metrica_destino)
            if d_origen != d_destino:
                violaciones.append(ViolacionIsometria(
                    entrada=f"{simbolos[i].texto()} / {simbolos[j].texto()}",
                    valor_origen=d_origen,
                    valor_destino=d_destino,
                ))
        revisados = len(casos)
    else:
        for simbolo, imagen in zip(simbolos, imagenes):
            p_origen = weight(simbolo, metrica_origen)
            p_destino = weight(imagen, metrica_destino)
            if p_origen != p_destino:
                violaciones.append(ViolacionIsometria(
                    entrada=simbolo.texto(), valor_origen=p_origen, valor_destino=p_destino
                ))
        revisados = len(simbolos)

    reporte = ReporteIsometria(
        mapa=mapa.etiqueta(),
        metrica_origen=metrica_origen,
        metrica_destino=metrica_destino,
        modo="distancia" if por_distancia else "peso",
        casos_revisados=revisados,
        violaciones=tuple(violaciones),
    )
    if violaciones:
        log.warning("%s: %d violaciones de %d casos", mapa.etiqueta(), len(violaciones), revisados)
    return reporte
