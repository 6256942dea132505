Symbols q3,q1,q2,x,y;
Symbols apartHq3,apartHq1,apartHq2;
