#include- apartsymbols.h

#procedure apartreduce(expr)
  id q3 = apartHq3;
  id q1 = apartHq1;
  id q2 = apartHq2;
  .sort
  id apartHq2 = q2;
  .sort
  #include- apartrules.h
  .sort
  id apartHq1 = q1;
  .sort
  #include- apartrules.h
  .sort
  id apartHq3 = q3;
  .sort
  #include- apartrules.h
  .sort
#endprocedure
