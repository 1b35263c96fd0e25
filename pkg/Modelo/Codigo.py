# Modelo/Codigo.py

from dataclasses import dataclass
from functools import cached_property
from typing import ClassVar, Dict, Iterator, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, model_validator

from Modelo.Anillo import Metrica, Modulo, PalabraAnillo
from Modelo.Mapa import TipoMapa


class MatrizGeneradora(BaseModel):
    """Matriz k x n sobre Z_m; el código es el submódulo generado por sus filas."""

    model_config = {"frozen": True}

    modulo: Modulo
    filas: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def _validar_forma(self) -> "MatrizGeneradora":
        if not self.filas:
            raise ValueError("La matriz necesita al menos una fila")
        n = len(self.filas[0])
        if n == 0:
            raise ValueError("La matriz necesita al menos una columna")
        m = self.modulo.m
        for i, fila in enumerate(self.filas):
            if len(fila) != n:
                raise ValueError(f"La fila {i} mide {len(fila)}, se esperaba {n}")
            if any(not 0 <= x < m for x in fila):
                raise ValueError(f"La fila {i} tiene residuos fuera de [0, {m})")
        return self

    @property
    def k(self) -> int:
        return len(self.filas)

    @property
    def n(self) -> int:
        return len(self.filas[0])

    def fila(self, i: int) -> PalabraAnillo:
        return PalabraAnillo(modulo=self.modulo, valores=self.filas[i])

    def como_arreglo(self) -> np.ndarray:
        return np.array(self.filas, dtype=np.int64)


# --- Procedencia de un código ---

@dataclass(frozen=True)
class DesdeGeneradora:
    generadora: MatrizGeneradora


@dataclass(frozen=True, eq=False)
class ImagenBajo:
    mapa: TipoMapa
    fuente: "CodigoBloque"


Procedencia = Union[DesdeGeneradora, ImagenBajo]


@dataclass(frozen=True, eq=False)
class CodigoBloque:
    """
    Conjunto enumerado y sin repeticiones de palabras de igual longitud sobre Z_m.
    Las palabras se guardan como arreglo (|C|, n) de sólo lectura, en orden lexicográfico.
    Usar `desde_palabras` para construirlo.
    """

    modulo: Modulo
    palabras: np.ndarray
    procedencia: Procedencia

    def __post_init__(self):
        if self.palabras.ndim != 2 or self.palabras.shape[0] == 0:
            raise ValueError("Un código de bloque es un conjunto no vacío de n-tuplas")
        if self.palabras.min() < 0 or self.palabras.max() >= self.modulo.m:
            raise ValueError(f"Hay palabras con residuos fuera de [0, {self.modulo.m})")
        if isinstance(self.procedencia, DesdeGeneradora) and not self.contiene(
            np.zeros(self.longitud, dtype=np.int64)
        ):
            raise ValueError("Un código generado por una matriz debe contener la palabra cero")
        self.palabras.setflags(write=False)

    @classmethod
    def desde_palabras(cls, modulo: Modulo, palabras: np.ndarray, procedencia: Procedencia) -> "CodigoBloque":
        """Elimina repeticiones y ordena lexicográficamente."""
        arreglo = np.asarray(palabras, dtype=np.int64)
        if arreglo.ndim != 2:
            raise ValueError("Se esperaba un arreglo bidimensional de palabras")
        unicas = np.unique(arreglo, axis=0) if arreglo.shape[0] else arreglo
        return cls(modulo=modulo, palabras=np.ascontiguousarray(unicas), procedencia=procedencia)

    @property
    def longitud(self) -> int:
        return int(self.palabras.shape[1])

    @property
    def tamano(self) -> int:
        return int(self.palabras.shape[0])

    @property
    def lineal_por_construccion(self) -> bool:
        return isinstance(self.procedencia, DesdeGeneradora)

    @cached_property
    def _claves(self) -> frozenset:
        return frozenset(fila.tobytes() for fila in self.palabras)

    def contiene(self, palabra: Union[np.ndarray, PalabraAnillo, Tuple[int, ...]]) -> bool:
        if isinstance(palabra, PalabraAnillo):
            if palabra.modulo != self.modulo:
                return False
            palabra = palabra.valores
        fila = np.asarray(palabra, dtype=np.int64)
        if fila.shape != (self.longitud,):
            return False
        return fila.tobytes() in self._claves

    def palabras_anillo(self) -> Iterator[PalabraAnillo]:
        for fila in self.palabras.tolist():
            yield PalabraAnillo(modulo=self.modulo, valores=tuple(fila))

    def __len__(self) -> int:
        return self.tamano

    def __repr__(self) -> str:
        return f"<CodigoBloque {self.modulo} n={self.longitud} |C|={self.tamano}>"


# --- Resultados de análisis ---

class EspectroPesos(BaseModel):
    """Histograma peso -> número de palabras para una métrica."""

    model_config = {"frozen": True}

    metrica: Metrica
    histograma: Dict[int, int]

    @model_validator(mode="after")
    def _validar_conteos(self) -> "EspectroPesos":
        if any(peso < 0 or conteo <= 0 for peso, conteo in self.histograma.items()):
            raise ValueError("Pesos negativos o conteos no positivos en el histograma")
        return self

    @property
    def total(self) -> int:
        return sum(self.histograma.values())

    def peso_minimo_no_nulo(self) -> Optional[int]:
        positivos = [p for p in self.histograma if p > 0]
        return min(positivos) if positivos else None


class TestigoLinealidad(BaseModel):
    """Combinación de palabras del código cuyo resultado no pertenece al código."""

    __test__: ClassVar[bool] = False  # pytest no debe recogerla

    model_config = {"frozen": True}

    operacion: str  # "suma" | "escalar"
    a: Tuple[int, ...]
    b: Optional[Tuple[int, ...]] = None
    escalar: Optional[int] = None
    resultado: Tuple[int, ...]

    def verificar(self, codigo: CodigoBloque) -> bool:
        m = codigo.modulo.m
        if not codigo.contiene(self.a):
            return False
        if self.operacion == "suma":
            if self.b is None or not codigo.contiene(self.b):
                return False
            esperado = tuple((x + y) % m for x, y in zip(self.a, self.b))
        else:
            esperado = tuple((self.escalar * x) % m for x in self.a)
        return esperado == self.resultado and not codigo.contiene(self.resultado)


class VeredictoLinealidad(BaseModel):
    model_config = {"frozen": True}

    lineal: bool
    testigo: Optional[TestigoLinealidad] = None

    @model_validator(mode="after")
    def _validar_testigo(self) -> "VeredictoLinealidad":
        if not self.lineal and self.testigo is None:
            raise ValueError("Un veredicto no lineal debe llevar testigo")
        return self


class ViolacionIsometria(BaseModel):
    entrada: str
    valor_origen: int
    valor_destino: int


class ReporteIsometria(BaseModel):
    mapa: str
    metrica_origen: Metrica
    metrica_destino: Metrica
    modo: str  # "peso" | "distancia"
    casos_revisados: int
    violaciones: Tuple[ViolacionIsometria, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violaciones
