from setuptools import setup, find_packages

exec(open('posmat/version.py').read()) # loads __version__

setup(name='posmat',
      version=__version__,
    description='Certificates of positivity for polynomial matrices, in exact arithmetic',
    long_description=open('pypi-readme.rst').read(),
    license='MIT',
    keywords="Positivstellensatz polynomial matrix sum-of-squares certificate semidefinite",
    packages=find_packages(exclude=['docs', 'tests', 'examples']),
    package_data={'posmat': ['fixtures/*.json']},
    entry_points={'console_scripts': ['posmat=posmat.cli:main']},
    install_requires=["numpy", "scipy>=1.6", "sympy>=1.9"],
    extras_require={'tests': ['pytest']})
